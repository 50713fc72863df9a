import java . util . * ;
import java . lang . * ;

class CASE_08 {

    static int f_gold ( int arr [ ] , int n ) {
        int best = arr [ 0 ] ;
        for ( int i = 1 ; i < n ; i ++ ) {
            if ( arr [ i ] > best ) {
                best = arr [ i ] ;
            }
        }
        return best ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( new int [ ] { 3 , 11 , 2 , 7 } , 4 ) ) ;
    }
}
