import java . util . * ;
import java . lang . * ;

class CASE_07 {

    static int f_gold ( int a [ ] , int n , int x ) {
        int count = 0 ;
        for ( int i = 0 ; i < n ; i ++ ) {
            if ( a [ i ] < x ) {
                count ++ ;
            }
        }
        return count ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( new int [ ] { 4 , 8 , 1 , 9 , 4 } , 5 , 4 ) ) ;
    }
}
