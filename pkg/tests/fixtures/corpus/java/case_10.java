import java . util . * ;
import java . lang . * ;

class CASE_10 {

    static int f_gold ( int a [ ] , int n ) {
        int best = a [ 0 ] ;
        for ( int i = 1 ; i < n ; i ++ ) {
            if ( a [ i ] > best ) {
                best = a [ i ] ;
            }
        }
        return best ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( new int [ ] { 3 , 11 , 2 , 7 } , 4 ) ) ;
    }
}
